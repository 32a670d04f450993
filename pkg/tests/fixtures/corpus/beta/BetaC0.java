package beta ;

/** Generated class BetaC0. */
public class BetaC0 extends BetaBase implements BetaSized {
    private int f0 = 0 ;
    private int f1 = 1 ;
    private int f2 = 2 ;
    private static int s0 = 0 ;
    public int shared = 1 ;
    private alpha . AlphaC7 helper = new alpha . AlphaC7 ( ) ;

    public BetaC0 ( ) { }
    public BetaC0 ( int a ) { f0 = a ; }
    public void setF0 ( int v ) { this . f0 = v ; }
    public int getF1 ( ) { return f1 ; }
    public void setF2 ( int v ) { this . f2 = v ; }
    public int peek ( int q ) { return q + 1 ; }
    public int size ( int k ) { return k * 2 ; }
    public int area ( int s ) { return s * s ; }

    void work0 ( int p0 , int p1 ) {
        int v = 0 ;
        v = v + helper . peek ( v ) ;
        if ( v > 0 || v == 7 ) {
        v = v + 1 ;
        }
        v = v + helper . shared ;
    }

    private void work1 ( int p0 ) {
        int v = f0 ;
        for ( int i = 0 ; i < 3 ; i ++ ) {
        v = v + i ;
        }
        for ( int i = 0 ; i < 3 ; i ++ ) {
        v = v + i ;
        }
        v = v + helper . peek ( v ) ;
        switch ( v ) {
        case 1 :
        v = v + 2 ;
        break ;
        case 2 :
        v = v + 3 ;
        break ;
        default :
        v = 0 ;
        }
        f0 = v ;
    }
}
