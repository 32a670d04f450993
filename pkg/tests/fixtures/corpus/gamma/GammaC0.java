package gamma ;

/** Generated class GammaC0. */
public class GammaC0 extends GammaBase {
    private int f0 = 0 ;
    private int f1 = 1 ;
    private int f2 = 2 ;
    private static int s0 = 0 ;
    private static int s1 = 1 ;
    public int shared = 1 ;
    private beta . BetaC4 helper = new beta . BetaC4 ( ) ;

    public GammaC0 ( ) { }
    public int getF0 ( ) { return f0 ; }
    public void setF0 ( int v ) { this . f0 = v ; }
    public int getF2 ( ) { return f2 ; }
    public void setF2 ( int v ) { this . f2 = v ; }
    public int peek ( int q ) { return q + 1 ; }
    public int area ( int s ) { return s * s ; }
    static int twice ( int t ) { return t * s0 ; }

    protected void work0 ( int p0 , int p1 , int p2 ) {
        int v = f1 ;
        // keep going
        switch ( v ) {
        case 1 :
        v = v + 2 ;
        break ;
        case 2 :
        v = v + 3 ;
        break ;
        case 3 :
        v = v + 4 ;
        break ;
        default :
        v = 0 ;
        }
        v = v > 2 ? v : 2 ;
        v = v + helper . peek ( v ) ;
        for ( int i = 0 ; i < 3 ; i ++ ) {
        v = v + i ;
        }
        f1 = v ;
    }

    protected void work1 ( int p0 , int p1 ) {
        int v = f0 ;
        v = v > 2 ? v : 2 ;
        v = v + helper . peek ( v ) ;
        v = v + helper . shared ;
        f0 = v ;
    }

    protected void work2 ( int p0 , int p1 , int p2 ) {
        int v = f2 ;
        // keep going
        v = v + helper . shared ;
        f2 = v ;
    }
}
