package alpha ;

/** Generated class AlphaC1. */
public class AlphaC1 extends AlphaBase implements AlphaSized {
    private int f0 = 0 ;
    public int shared = 1 ;
    private AlphaC0 helper = new AlphaC0 ( ) ;

    public void setF0 ( int v ) { this . f0 = v ; }
    public int peek ( int q ) { return q + 1 ; }
    public int size ( int k ) { return k * 2 ; }
    public int area ( int s ) { return s * s ; }

    private void work0 ( int p0 , int p1 ) {
        int v = f0 ;
        // keep going
        v = v > 2 ? v : 2 ;
        v = v + helper . peek ( v ) ;
        v = v > 2 ? v : 2 ;
        v = v > 2 ? v : 2 ;
        v = v + helper . shared ;
        f0 = v ;
    }

    /** Work item 1. */
    protected void work1 ( ) {
        int v = f0 ;
        v = v + helper . peek ( v ) ;
        while ( v < 100 ) {
        if ( v > 50 ) {
        break ;
        }
        v = v + 2 ;
        if ( v > 40 ) {
        continue ;
        }
        v = v + 1 ;
        }
        f0 = v ;
    }

    /** Work item 2. */
    public void work2 ( int p0 , int p1 ) {
        int v = f0 ;
        for ( int i = 0 ; i < 3 ; i ++ ) {
        v = v + i ;
        }
        while ( v < 10 ) {
        if ( v > 5 ) {
        v = v + 2 ;
        }
        v = v + 1 ;
        }
        v = v + helper . peek ( v ) ;
        v = v + helper . shared ;
        f0 = v ;
    }
}
